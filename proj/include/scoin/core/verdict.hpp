#pragma once

#include <string>
#include <utility>
#include <vector>

namespace scoin {

/// Outcome of a verification: pass flag plus human-readable witnesses for failures.
struct Verdict {
  bool pass = true;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  void fail(std::string witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
  void merge(const Verdict& o) {
    pass = pass && o.pass;
    witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

}  // namespace scoin
