// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/molparse/element.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace fastqspr::mol {
namespace {

constexpr std::array<ElementInfo, 19> kElements = {{
    {"*", 0, 0, 0, std::nullopt},
    {"H", 1, 1, 1, 1.008},
    {"Li", 3, 1, 2, 6.94},
    {"B", 5, 3, 2, 10.81},
    {"C", 6, 4, 2, 12.011},
    {"N", 7, 5, 2, 14.007},
    {"O", 8, 6, 2, 15.999},
    {"F", 9, 7, 2, 18.998},
    {"Na", 11, 1, 3, 22.990},
    {"Mg", 12, 2, 3, 24.305},
    {"Si", 14, 4, 3, 28.085},
    {"P", 15, 5, 3, 30.974},
    {"S", 16, 6, 3, 32.06},
    {"Cl", 17, 7, 3, 35.45},
    {"K", 19, 1, 4, 39.098},
    {"Ca", 20, 2, 4, 40.078},
    {"Se", 34, 6, 4, 78.971},
    {"Br", 35, 7, 4, 79.904},
    {"I", 53, 7, 5, 126.904},
}};

constexpr std::array<std::string_view, 118> kPeriodicSymbols = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
    "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
    "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr",
    "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd",
    "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
    "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf",
    "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
    "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm",
    "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs",
    "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};

}  // namespace

const ElementInfo* FindElement(std::string_view symbol) {
  for (const auto& e : kElements) {
    if (e.symbol == symbol) return &e;
  }
  return nullptr;
}

const ElementInfo& ElementByNumber(int atomic_number) {
  for (const auto& e : kElements) {
    if (e.atomic_number == atomic_number) return e;
  }
  throw std::out_of_range("unsupported atomic number " + std::to_string(atomic_number));
}

bool IsPeriodicSymbol(std::string_view symbol) {
  return std::find(kPeriodicSymbols.begin(), kPeriodicSymbols.end(), symbol) !=
         kPeriodicSymbols.end();
}

std::vector<int> AllowedValences(const ElementInfo& element, int formal_charge) {
  const int electrons = element.valence_electrons - formal_charge;
  if (element.atomic_number == 1) {
    if (electrons == 1) return {1};
    if (electrons == 0 || electrons == 2) return {0};
    return {};
  }
  if (electrons < 0 || electrons > 8) return {};
  const int base = electrons <= 4 ? electrons : 8 - electrons;
  std::vector<int> valences = {base};
  if (element.period >= 3 && electrons >= 5) {
    for (int v = base + 2; v <= electrons; v += 2) valences.push_back(v);
  }
  return valences;
}

double HydrogenMass() { return *kElements[1].mass; }

}  // namespace fastqspr::mol
