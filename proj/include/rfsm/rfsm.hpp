#pragma once

#include "error.hpp"
#include "id_set.hpp"
#include "machine.hpp"
#include "morphism.hpp"
#include "name_table.hpp"
#include "products.hpp"
#include "propositions.hpp"
#include "random.hpp"
#include "render.hpp"
#include "rough_set.hpp"
#include "text_format.hpp"
#include "trials.hpp"
