// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FASTQSPR_MOLPARSE_ELEMENT_H_
#define FASTQSPR_MOLPARSE_ELEMENT_H_

#include <optional>
#include <string_view>
#include <vector>

namespace fastqspr::mol {

struct ElementInfo {
  std::string_view symbol;
  int atomic_number;
  int valence_electrons;
  int period;
  // Standard atomic weight; empty when the element has no tabulated mass
  // (the wildcard atom).
  std::optional<double> mass;
};

// Element with the given symbol from the supported table, or nullptr.
const ElementInfo* FindElement(std::string_view symbol);

// Element by atomic number (0 is the wildcard atom "*").
const ElementInfo& ElementByNumber(int atomic_number);

// True for any symbol of the periodic table, supported or not. Lets the
// tokenizer tell "unsupported element" apart from garbage.
bool IsPeriodicSymbol(std::string_view symbol);

// Allowed total valences (bond orders plus hydrogens) for an element carrying
// the given formal charge, ascending. Charge shifts the valence-electron count
// by one per unit (isoelectronic rule); third-row and heavier p-block atoms
// also admit the expanded-octet valences. Empty means no valid valence.
std::vector<int> AllowedValences(const ElementInfo& element, int formal_charge);

// Mass of a hydrogen atom from the same table.
double HydrogenMass();

}  // namespace fastqspr::mol

#endif  // FASTQSPR_MOLPARSE_ELEMENT_H_
