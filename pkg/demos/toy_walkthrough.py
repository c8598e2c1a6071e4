"""The eight-pair example relation, built up one object at a time."""

from pathlib import Path

from dowkerlab import dowker_complex, rectangle_complex, transpose
from dowkerlab.complex import complex_to_dot
from dowkerlab.relation import load_relation

R = load_relation(Path(__file__).parent / "data" / "toy.json")
print("pairs:", sorted(R.pairs))

D = dowker_complex(R)
DT = dowker_complex(transpose(R))
E = rectangle_complex(R)

for name, K in [("D(R)", D), ("D(R^T)", DT), ("E(R)", E)]:
    counts = [len(K.k_simplices(k)) for k in range(K.dimension + 1)]
    print(f"{name:7} facets={list(K.facets)}")
    print(f"{'':7} simplices per dimension {counts}, euler {K.euler_characteristic()}")

# E(R) as a graph; pipe into `dot -Tsvg` to draw it
print(complex_to_dot(E))
