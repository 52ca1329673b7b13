"""Regenerate pah_logp.csv: 55 benzenoid hydrocarbons with Crippen logP targets.

Benzenoids are grown on the hexagonal lattice (all Kekulean polyhexes with
2-5 hexagons, a fixed-stride sample of the 6-hexagon ones, and five large
pericondensed systems up to circumcoronene). Targets are Wildman-Crippen
logP values from RDKit, rounded to two decimals.

Requires RDKit; it is only needed to regenerate the file, not to build.
"""

import csv
import math
import sys

from rdkit import Chem, RDLogger
from rdkit.Chem import Crippen, rdMolDescriptors

RDLogger.DisableLog("rdApp.*")

NEIGHBOURS = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)]


def hexagon_vertices(q, r):
    cx = math.sqrt(3.0) * (q + r / 2.0)
    cy = 1.5 * r
    pts = []
    for k in range(6):
        a = math.radians(30 + 60 * k)
        pts.append((round(cx + math.cos(a), 4), round(cy + math.sin(a), 4)))
    return pts


def polyhex_smiles(cells):
    index = {}
    edges = set()
    for q, r in cells:
        verts = hexagon_vertices(q, r)
        for v in verts:
            index.setdefault(v, len(index))
        for k in range(6):
            a, b = index[verts[k]], index[verts[(k + 1) % 6]]
            edges.add((min(a, b), max(a, b)))
    mol = Chem.RWMol()
    for _ in range(len(index)):
        atom = Chem.Atom(6)
        atom.SetIsAromatic(True)
        mol.AddAtom(atom)
    for a, b in sorted(edges):
        mol.AddBond(a, b, Chem.BondType.AROMATIC)
        mol.GetBondBetweenAtoms(a, b).SetIsAromatic(True)
    try:
        m = mol.GetMol()
        Chem.SanitizeMol(m)
    except Exception:
        return None
    if any(atom.GetNumRadicalElectrons() for atom in m.GetAtoms()):
        return None
    return Chem.MolToSmiles(m)


def normalise(cells):
    q0 = min(q for q, _ in cells)
    r0 = min(r for _, r in cells)
    return frozenset((q - q0, r - r0) for q, r in cells)


def enumerate_polyhexes(max_size):
    level = {normalise([(0, 0)])}
    by_size = {1: level}
    for size in range(2, max_size + 1):
        grown = set()
        for shape in level:
            for q, r in shape:
                for dq, dr in NEIGHBOURS:
                    cell = (q + dq, r + dr)
                    if cell not in shape:
                        grown.add(normalise(list(shape) + [cell]))
        by_size[size] = grown
        level = grown
    return by_size


def circumscribe(cells):
    grown = set(cells)
    for q, r in cells:
        for dq, dr in NEIGHBOURS:
            grown.add((q + dq, r + dr))
    return sorted(grown)


def unique_smiles(shapes):
    seen = {}
    for shape in sorted(shapes, key=sorted):
        smi = polyhex_smiles(shape)
        if smi is not None and smi not in seen:
            seen[smi] = shape
    return sorted(seen)


def main(path):
    by_size = enumerate_polyhexes(6)
    picked = []
    for size in range(2, 6):
        picked.extend(unique_smiles(by_size[size]))
    six = unique_smiles(by_size[6])
    pyrene = [(0, 0), (1, -1), (1, 0), (2, -1)]
    large = {
        "coronene": circumscribe([(0, 0)]),
        "ovalene": circumscribe([(0, 0), (1, 0)]),
        "hexabenzocoronene": circumscribe([(0, 0)]) + [(1, 1), (2, -1), (1, -2), (-1, -1), (-2, 1), (-1, 2)],
        "circumpyrene": circumscribe(pyrene),
        "circumcoronene": circumscribe(circumscribe([(0, 0)])),
    }
    large_smiles = [polyhex_smiles(cells) for cells in large.values()]
    need = 55 - len(picked) - len(large_smiles)
    stride = len(six) / need
    picked.extend(six[int(i * stride)] for i in range(need))
    picked.extend(large_smiles)
    assert len(set(picked)) == 55, len(set(picked))

    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["compound", "smiles", "log_p"])
        for i, smi in enumerate(picked):
            mol = Chem.MolFromSmiles(smi)
            formula = rdMolDescriptors.CalcMolFormula(mol)
            writer.writerow([f"pah_{i + 1:02d}_{formula}", smi, f"{Crippen.MolLogP(mol):.2f}"])


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "pah_logp.csv")
