"""Which integers up to 40 are cycle counts of inseparable graphs?

Walks the rank-by-rank frontier of homeomorphism classes, then proves the
gaps exhaustively.
"""

from cyclecount import search, to_mgf

table = search.witness_search(40)
missing = [c for c in range(1, 41) if c not in table]
print("counts with a witness:", sorted(table))
print("no witness found for:", missing)

for c in missing:
    cert = search.prove_nonexistence(c)
    print(f"  {c:2d}: absent={cert.absent}, every rank below {cert.rank_cap} checked "
          f"({sum(cert.classes_per_rank.values())} classes)")

rec = table[17]
print(f"\nsmallest witness for 17 (planar={rec.planar}, hamiltonian={rec.hamiltonian}):")
print(to_mgf(rec.graph), end="")
