#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "rfsm/text_format.hpp"

namespace fixtures {

inline std::string read(const std::string& name) {
  std::ifstream in(std::string(RFSM_DATA_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline rfsm::Machine machine(const std::string& name) { return rfsm::parse_machine(read(name)); }

inline rfsm::Machine five_state() { return machine("five_state.rfsm"); }

/// One state, one input, looping on itself.
inline rfsm::Machine unit(const std::string& name = "U", const std::string& input = "a") {
  return rfsm::parse_machine("machine " + name + "\nstates u\nblock u\ninputs " + input +
                             "\ntrans u " + input + " lower { u } upper { u }\n");
}

}  // namespace fixtures
