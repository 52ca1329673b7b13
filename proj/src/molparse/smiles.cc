// Copyright 2026 The fastqspr Authors
// SPDX-License-Identifier: Apache-2.0

#include "fastqspr/molparse/smiles.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fastqspr/molparse/element.h"
#include "matching.h"

namespace fastqspr::mol {
namespace {

struct ParsedAtom {
  int atomic_number = 0;
  int charge = 0;
  bool aromatic = false;
  int explicit_h = 0;
  bool bracket = false;
  std::size_t position = 0;
};

struct ParsedBond {
  int a = 0;
  int b = 0;
  char symbol = '\0';  // '\0' when implicit
  std::size_t position = 0;
};

struct RingOpening {
  int atom;
  char symbol;
  std::size_t position;
};

bool IsBondSymbol(char c) {
  return c == '-' || c == '=' || c == '#' || c == ':' || c == '/' || c == '\\' || c == '$';
}

// Collapses stereo single-bond marks so ring-closure symbols can be compared.
char CanonicalBondSymbol(char c) { return (c == '/' || c == '\\') ? '-' : c; }

class SmilesReader {
 public:
  explicit SmilesReader(std::string_view text) : text_(text) {}

  void Read() {
    if (text_.empty()) throw SmilesError("empty SMILES", 0);
    int previous = -1;
    std::vector<int> branches;
    char pending = '\0';
    std::size_t pending_pos = 0;

    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') {
        if (previous < 0) Fail("branch opened before any atom");
        if (pending) Fail("bond symbol before branch");
        branches.push_back(previous);
        ++pos_;
      } else if (c == ')') {
        if (branches.empty()) Fail("unbalanced ')'");
        if (pending) Fail("dangling bond symbol before ')'");
        previous = branches.back();
        branches.pop_back();
        ++pos_;
      } else if (c == '.') {
        if (pending) Fail("bond symbol before '.'");
        previous = -1;
        ++pos_;
      } else if (IsBondSymbol(c)) {
        if (c == '$') Fail("quadruple bonds are not supported");
        if (pending) Fail("two consecutive bond symbols");
        if (previous < 0) Fail("bond symbol without a preceding atom");
        pending = c;
        pending_pos = pos_;
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        if (previous < 0) Fail("ring-bond digit without a preceding atom");
        const std::size_t digit_pos = pos_;
        const int number = ReadRingNumber();
        auto it = open_rings_.find(number);
        if (it == open_rings_.end()) {
          open_rings_[number] = {previous, pending, digit_pos};
        } else {
          const RingOpening opening = it->second;
          open_rings_.erase(it);
          char symbol = opening.symbol;
          if (pending) {
            if (symbol && CanonicalBondSymbol(symbol) != CanonicalBondSymbol(pending)) {
              throw SmilesError("conflicting bond symbols on ring closure " +
                                    std::to_string(number),
                                digit_pos);
            }
            symbol = pending;
          }
          if (opening.atom == previous) {
            throw SmilesError("ring closure joins an atom to itself", digit_pos);
          }
          bonds_.push_back({opening.atom, previous, symbol, digit_pos});
        }
        pending = '\0';
      } else {
        const int atom = ReadAtom();
        if (previous >= 0) bonds_.push_back({previous, atom, pending, pending ? pending_pos : pos_});
        pending = '\0';
        previous = atom;
      }
    }
    if (pending) throw SmilesError("dangling bond symbol at end of input", pending_pos);
    if (!branches.empty()) throw SmilesError("unbalanced '(' (unclosed branch)", text_.size());
    if (!open_rings_.empty()) {
      const auto& [number, opening] = *open_rings_.begin();
      throw SmilesError("unclosed ring-bond digit " + std::to_string(number), opening.position);
    }
    if (atoms_.empty()) throw SmilesError("no atoms in SMILES", 0);
  }

  std::vector<ParsedAtom>& atoms() { return atoms_; }
  std::vector<ParsedBond>& bonds() { return bonds_; }

 private:
  [[noreturn]] void Fail(const std::string& message) const { throw SmilesError(message, pos_); }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(std::size_t offset = 0) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }

  int ReadRingNumber() {
    if (text_[pos_] == '%') {
      if (!std::isdigit(static_cast<unsigned char>(Peek(1))) ||
          !std::isdigit(static_cast<unsigned char>(Peek(2)))) {
        Fail("'%' must be followed by two digits");
      }
      const int number = (Peek(1) - '0') * 10 + (Peek(2) - '0');
      pos_ += 3;
      return number;
    }
    return text_[pos_++] - '0';
  }

  int ReadAtom() {
    const std::size_t start = pos_;
    ParsedAtom atom;
    atom.position = start;
    const char c = text_[pos_];
    if (c == '[') {
      ReadBracketAtom(atom);
    } else if (c == '*') {
      atom.atomic_number = 0;
      ++pos_;
    } else if (c == 'C' && Peek(1) == 'l') {
      atom.atomic_number = 17;
      pos_ += 2;
    } else if (c == 'B' && Peek(1) == 'r') {
      atom.atomic_number = 35;
      pos_ += 2;
    } else if (std::string_view("BCNOPSFI").find(c) != std::string_view::npos) {
      atom.atomic_number = FindElement(std::string(1, c))->atomic_number;
      ++pos_;
    } else if (std::string_view("bcnops").find(c) != std::string_view::npos) {
      atom.atomic_number =
          FindElement(std::string(1, static_cast<char>(std::toupper(c))))->atomic_number;
      atom.aromatic = true;
      ++pos_;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      std::string symbol(1, c);
      if (std::islower(static_cast<unsigned char>(Peek(1))) &&
          IsPeriodicSymbol(symbol + Peek(1))) {
        symbol += Peek(1);
      }
      if (IsPeriodicSymbol(symbol)) {
        Fail("element '" + symbol + "' must be written inside brackets");
      }
      Fail("unknown element '" + symbol + "'");
    } else {
      Fail(std::string("unexpected character '") + c + "'");
    }
    atoms_.push_back(atom);
    return static_cast<int>(atoms_.size()) - 1;
  }

  void ReadBracketAtom(ParsedAtom& atom) {
    atom.bracket = true;
    ++pos_;  // '['
    while (std::isdigit(static_cast<unsigned char>(Peek()))) ++pos_;  // isotope

    std::string symbol;
    const char c = Peek();
    if (c == '*') {
      symbol = "*";
      ++pos_;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      if (c == 's' && Peek(1) == 'e') {
        symbol = "Se";
        pos_ += 2;
      } else if (c == 'a' && Peek(1) == 's') {
        symbol = "As";
        pos_ += 2;
      } else if (std::string_view("bcnops").find(c) != std::string_view::npos) {
        symbol = std::string(1, static_cast<char>(std::toupper(c)));
        ++pos_;
      } else {
        Fail(std::string("unknown aromatic element '") + c + "'");
      }
      atom.aromatic = true;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      symbol = std::string(1, c);
      if (std::islower(static_cast<unsigned char>(Peek(1))) &&
          IsPeriodicSymbol(symbol + Peek(1))) {
        symbol += Peek(1);
      }
      if (!IsPeriodicSymbol(symbol)) Fail("unknown element '" + symbol + "'");
      pos_ += symbol.size();
    } else {
      Fail("missing element symbol in bracket atom");
    }
    const ElementInfo* element = FindElement(symbol);
    if (element == nullptr) {
      throw SmilesError("unsupported element '" + symbol + "'", atom.position);
    }
    atom.atomic_number = element->atomic_number;

    // Chirality is accepted and dropped.
    if (Peek() == '@') {
      while (Peek() == '@') ++pos_;
      static constexpr std::string_view kClasses[] = {"TH", "AL", "SP", "TB", "OH"};
      for (auto cls : kClasses) {
        if (text_.substr(pos_, 2) == cls) {
          pos_ += 2;
          while (std::isdigit(static_cast<unsigned char>(Peek()))) ++pos_;
          break;
        }
      }
    }
    if (Peek() == 'H') {
      ++pos_;
      atom.explicit_h = 1;
      if (std::isdigit(static_cast<unsigned char>(Peek()))) {
        atom.explicit_h = 0;
        while (std::isdigit(static_cast<unsigned char>(Peek()))) {
          atom.explicit_h = atom.explicit_h * 10 + (text_[pos_++] - '0');
        }
      }
    }
    if (Peek() == '+' || Peek() == '-') {
      const char sign_char = text_[pos_++];
      const int sign = sign_char == '+' ? 1 : -1;
      int magnitude = 1;
      if (std::isdigit(static_cast<unsigned char>(Peek()))) {
        magnitude = 0;
        while (std::isdigit(static_cast<unsigned char>(Peek()))) {
          magnitude = magnitude * 10 + (text_[pos_++] - '0');
        }
      } else {
        while (Peek() == sign_char) {
          ++magnitude;
          ++pos_;
        }
      }
      atom.charge = sign * magnitude;
    }
    if (Peek() == ':') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(Peek()))) ++pos_;
    }
    if (Peek() != ']') Fail("unterminated bracket atom");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<ParsedAtom> atoms_;
  std::vector<ParsedBond> bonds_;
  std::map<int, RingOpening> open_rings_;
};

// Folds neutral [H] atoms bonded to a single heavy atom into that atom's
// explicit hydrogen count.
void FoldExplicitHydrogens(std::vector<ParsedAtom>& atoms, std::vector<ParsedBond>& bonds) {
  std::vector<int> degree(atoms.size(), 0);
  for (const auto& b : bonds) {
    ++degree[b.a];
    ++degree[b.b];
  }
  std::vector<bool> removed(atoms.size(), false);
  for (const auto& b : bonds) {
    for (auto [h, heavy] : {std::pair{b.a, b.b}, std::pair{b.b, b.a}}) {
      const ParsedAtom& atom = atoms[h];
      if (atom.atomic_number == 1 && atom.charge == 0 && atom.explicit_h == 0 &&
          degree[h] == 1 && atoms[heavy].atomic_number != 1 && !removed[heavy] &&
          CanonicalBondSymbol(b.symbol) != '=' && b.symbol != '#') {
        removed[h] = true;
        ++atoms[heavy].explicit_h;
      }
    }
  }
  if (std::none_of(removed.begin(), removed.end(), [](bool r) { return r; })) return;
  std::vector<int> remap(atoms.size(), -1);
  std::vector<ParsedAtom> kept;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!removed[i]) {
      remap[i] = static_cast<int>(kept.size());
      kept.push_back(atoms[i]);
    }
  }
  std::vector<ParsedBond> kept_bonds;
  for (const auto& b : bonds) {
    if (removed[b.a] || removed[b.b]) continue;
    kept_bonds.push_back({remap[b.a], remap[b.b], b.symbol, b.position});
  }
  atoms = std::move(kept);
  bonds = std::move(kept_bonds);
}

BondOrder OrderFromSymbol(char symbol, bool both_aromatic) {
  switch (symbol) {
    case '=':
      return BondOrder::kDouble;
    case '#':
      return BondOrder::kTriple;
    case ':':
      return BondOrder::kAromatic;
    case '\0':
      return both_aromatic ? BondOrder::kAromatic : BondOrder::kSingle;
    default:
      return BondOrder::kSingle;
  }
}

int KekuleValue(BondOrder order) {
  return order == BondOrder::kAromatic ? 1 : static_cast<int>(order);
}

bool IsElectronegative(int atomic_number) {
  return atomic_number == 7 || atomic_number == 8 || atomic_number == 16 || atomic_number == 34;
}

// Pi electrons an atom donates to a ring, or nullopt when the atom breaks
// conjugation. Uses the Kekule bond orders.
std::optional<int> PiContribution(const MolecularGraph& mol, const std::vector<int>& kekule,
                                  const std::vector<bool>& in_ring, int atom_index) {
  const Atom& atom = mol.atoms()[atom_index];
  const auto nbrs = mol.neighbors(atom_index);
  const auto incident = mol.incident_bonds(atom_index);
  int exocyclic_double = -1;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const int order = kekule[incident[i]];
    if (order == 3) return std::nullopt;
    if (order != 2) continue;
    if (in_ring[nbrs[i]] || mol.IsRingAtom(nbrs[i])) return 1;
    exocyclic_double = nbrs[i];
  }
  if (exocyclic_double >= 0) {
    if (atom.atomic_number == 6 && IsElectronegative(mol.atoms()[exocyclic_double].atomic_number)) {
      return 0;
    }
    return std::nullopt;
  }
  const int z = atom.atomic_number;
  const int connections = mol.degree(atom_index) + atom.total_h();
  if ((z == 7 || z == 15) && atom.formal_charge == 0 && connections == 3) return 2;
  if ((z == 8 || z == 16 || z == 34) && atom.formal_charge == 0) return 2;
  if (z == 6 && atom.formal_charge == -1) return 2;
  if (z == 6 && atom.formal_charge == 1) return 0;
  if (z == 5 && atom.formal_charge == 0) return 0;
  return std::nullopt;
}

MolecularGraph Assemble(std::string source, std::vector<ParsedAtom> parsed_atoms,
                        std::vector<ParsedBond> parsed_bonds) {
  FoldExplicitHydrogens(parsed_atoms, parsed_bonds);

  std::vector<Atom> atoms;
  atoms.reserve(parsed_atoms.size());
  for (const auto& p : parsed_atoms) {
    if (p.aromatic && p.atomic_number == 0) {
      throw SmilesError("aromatic wildcard atoms are not supported", p.position);
    }
    Atom atom;
    atom.atomic_number = p.atomic_number;
    atom.formal_charge = p.charge;
    atom.is_aromatic = p.aromatic;
    atom.explicit_h = p.explicit_h;
    atoms.push_back(atom);
  }
  std::vector<Bond> bonds;
  bonds.reserve(parsed_bonds.size());
  for (const auto& p : parsed_bonds) {
    bonds.push_back({p.a, p.b, OrderFromSymbol(p.symbol, atoms[p.a].is_aromatic && atoms[p.b].is_aromatic)});
  }

  std::optional<MolecularGraph> topology;
  try {
    topology.emplace(atoms, bonds, source);
  } catch (const GraphError& e) {
    throw SmilesError(e.what(), 0);
  }
  const MolecularGraph& topo = *topology;

  // Aromatic flags only make sense inside rings.
  for (int i = 0; i < topo.num_atoms(); ++i) {
    if (atoms[i].is_aromatic && !topo.IsRingAtom(i)) {
      throw SmilesError("aromatic atom outside any ring", parsed_atoms[i].position);
    }
  }
  for (int k = 0; k < topo.num_bonds(); ++k) {
    if (bonds[k].order != BondOrder::kAromatic) continue;
    if (!topo.IsRingBond(k)) {
      bonds[k].order = BondOrder::kSingle;
    } else {
      atoms[bonds[k].a].is_aromatic = true;
      atoms[bonds[k].b].is_aromatic = true;
    }
  }

  // Kekulization: aromatic atoms whose lowest valence leaves room for one more
  // bond must receive exactly one double bond from the aromatic subgraph.
  std::vector<int> single_sum(atoms.size(), 0);
  for (const auto& b : bonds) {
    single_sum[b.a] += KekuleValue(b.order);
    single_sum[b.b] += KekuleValue(b.order);
  }
  std::vector<int> node_of(atoms.size(), -1);
  std::vector<int> atom_of;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!atoms[i].is_aromatic) continue;
    const auto& element = ElementByNumber(atoms[i].atomic_number);
    const int used = single_sum[i] + atoms[i].explicit_h;
    const auto valences = AllowedValences(element, atoms[i].formal_charge);
    auto it = std::find_if(valences.begin(), valences.end(), [&](int v) { return v >= used; });
    if (it != valences.end() && *it >= used + 1) {
      node_of[i] = static_cast<int>(atom_of.size());
      atom_of.push_back(static_cast<int>(i));
    }
  }
  std::vector<int> kekule(bonds.size());
  for (std::size_t k = 0; k < bonds.size(); ++k) kekule[k] = KekuleValue(bonds[k].order);
  if (!atom_of.empty()) {
    std::vector<std::vector<int>> adjacency(atom_of.size());
    for (const auto& b : bonds) {
      if (b.order != BondOrder::kAromatic) continue;
      const int u = node_of[b.a];
      const int v = node_of[b.b];
      if (u < 0 || v < 0) continue;
      adjacency[u].push_back(v);
      adjacency[v].push_back(u);
    }
    const auto mate = internal::MaximumMatching(adjacency);
    for (std::size_t u = 0; u < mate.size(); ++u) {
      if (mate[u] == -1) {
        throw SmilesError("aromatic system has no valid Kekule structure",
                          parsed_atoms[atom_of[u]].position);
      }
    }
    for (std::size_t k = 0; k < bonds.size(); ++k) {
      if (bonds[k].order != BondOrder::kAromatic) continue;
      const int u = node_of[bonds[k].a];
      const int v = node_of[bonds[k].b];
      if (u >= 0 && v >= 0 && mate[u] == v) kekule[k] = 2;
    }
  }

  // Valences and implicit hydrogens.
  std::vector<int> bond_sum(atoms.size(), 0);
  for (std::size_t k = 0; k < bonds.size(); ++k) {
    bond_sum[bonds[k].a] += kekule[k];
    bond_sum[bonds[k].b] += kekule[k];
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Atom& atom = atoms[i];
    if (atom.atomic_number == 0) continue;
    const auto& element = ElementByNumber(atom.atomic_number);
    const int used = bond_sum[i] + atom.explicit_h;
    const auto valences = AllowedValences(element, atom.formal_charge);
    if (parsed_atoms[i].bracket) {
      if (std::find(valences.begin(), valences.end(), used) == valences.end()) {
        throw SmilesError("valence violation on " + std::string(element.symbol) + " (" +
                              std::to_string(used) + " bonds)",
                          parsed_atoms[i].position);
      }
      continue;
    }
    auto it = std::find_if(valences.begin(), valences.end(), [&](int v) { return v >= used; });
    if (it == valences.end()) {
      throw SmilesError("valence violation on " + std::string(element.symbol) + " (" +
                            std::to_string(used) + " bonds)",
                        parsed_atoms[i].position);
    }
    atom.implicit_h = *it - used;
  }

  // Aromaticity perception for rings written in Kekule form.
  MolecularGraph with_h(atoms, bonds, source);
  for (const auto& ring : topo.rings()) {
    const bool written_aromatic = std::all_of(ring.begin(), ring.end(),
                                              [&](int a) { return atoms[a].is_aromatic; });
    if (written_aromatic) continue;
    std::vector<bool> in_ring(atoms.size(), false);
    for (int a : ring) in_ring[a] = true;
    int electrons = 0;
    bool conjugated = true;
    for (int a : ring) {
      const auto pi = PiContribution(with_h, kekule, in_ring, a);
      if (!pi) {
        conjugated = false;
        break;
      }
      electrons += *pi;
    }
    if (!conjugated || electrons % 4 != 2) continue;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const int a = ring[i];
      const int b = ring[(i + 1) % ring.size()];
      atoms[a].is_aromatic = true;
      bonds[topo.BondIndex(a, b)].order = BondOrder::kAromatic;
    }
  }
  return MolecularGraph(std::move(atoms), std::move(bonds), std::move(source));
}

}  // namespace

MolecularGraph ParseSmiles(std::string_view smiles) {
  SmilesReader reader(smiles);
  reader.Read();
  return Assemble(std::string(smiles), std::move(reader.atoms()), std::move(reader.bonds()));
}

}  // namespace fastqspr::mol
