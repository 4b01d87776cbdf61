// Builds the four product kinds from two small machines and checks that
// the restricted product is covered by the full one.

#include <iostream>

#include "rfsm/rfsm.hpp"

namespace {

const char* kDoor = R"(machine Door
states closed ajar open
block closed
block ajar open
inputs push pull
trans closed push lower { } upper { ajar open }
trans closed pull lower { closed } upper { closed }
trans ajar push lower { ajar open } upper { ajar open }
trans ajar pull lower { closed } upper { closed }
trans open push lower { ajar open } upper { ajar open }
trans open pull lower { } upper { closed ajar open }
)";

const char* kLight = R"(machine Light
states off on
block off
block on
inputs push pull
trans off push lower { on } upper { on }
trans off pull lower { off } upper { off }
trans on push lower { on } upper { on }
trans on pull lower { off } upper { off }
)";

}  // namespace

int main() {
  auto door = rfsm::parse_machine(kDoor);
  auto light = rfsm::parse_machine(kLight);

  std::cout << rfsm::render_state_table(door) << "\n";

  auto full = rfsm::full_direct(door, light);
  auto restricted = rfsm::restricted_direct(door, light);
  auto wreath = rfsm::wreath(door, light);
  auto cascade = rfsm::cascade(door, light, rfsm::passthrough_wiring(door, light));
  for (const auto* m : {&full, &restricted, &wreath, &cascade})
    std::cout << m->name() << ": " << m->num_states() << " states, " << m->num_symbols() << " inputs\n";

  auto r = rfsm::witness_restricted_in_full(door, light);
  std::cout << "\n" << r.claim << ": " << (r.holds ? "holds" : "fails") << "\n";
  std::cout << rfsm::serialize_covering(*r.covering_pair, restricted, full);
  return r.holds ? 0 : 1;
}
