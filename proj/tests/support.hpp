#pragma once

#include <string>

#include "actwb/selftest.hpp"

namespace testsupport {

inline std::string data_dir() { return ACTWB_DATA_DIR; }
inline std::string bin_path() { return ACTWB_BIN; }

inline actwb::MonoidPtr catalog_monoid(const std::string& name) {
  for (const auto& e : actwb::builtin_catalog())
    if (e.name == name) return e.monoid;
  throw std::runtime_error("no such catalog monoid: " + name);
}

// The 3-element monoid used across the tests: a right-zero pair
// with adjoined identity, elements 0=1, 1=a, 2=b.
inline actwb::MonoidPtr rz_pair() { return catalog_monoid("rzero2"); }

// Carrier {p,q,x} over rz_pair: a*x=p, b*x=q, p and q fixed.
inline actwb::Act pqx_act() {
  return actwb::validate_act(rz_pair(), {{0, 1, 2}, {0, 1, 0}, {0, 1, 1}});
}

}  // namespace testsupport
