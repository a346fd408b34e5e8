#pragma once

#include <string>

#include "actwb/act.hpp"

namespace actwb {

struct LoadedMonoid {
  MonoidPtr monoid;
  std::string id;    // file stem
  std::string path;  // as given
};

struct LoadedAct {
  Act act;
  std::string id;
  std::string path;
  std::string monoid_ref;   // reference string as written in the file
  std::string monoid_path;  // the reference resolved against the act file
};

/// Format: first significant line `monoid <n>`, then n rows of n integers.
/// Lines starting with `#` and blank lines are skipped.
LoadedMonoid load_monoid(const std::string& path);

/// Format: first significant line `act <monoid-file> <m>`, then one row of m
/// integers per monoid element. The monoid path is resolved relative to the
/// act file's directory.
LoadedAct load_act(const std::string& path);

std::string monoid_to_text(const Monoid& m);
std::string act_to_text(const Act& a, const std::string& monoid_ref);

std::string read_file(const std::string& path);

}  // namespace actwb
