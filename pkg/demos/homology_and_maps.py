"""Integer homology, the projections out of E(R), and the induced isomorphism."""

from dowkerlab import (
    dowker_complex,
    from_facets,
    homology,
    is_quasi_isomorphism,
    make_relation,
    pi,
    pi_hat,
    psi_star,
    rectangle_complex,
    transpose,
)
from dowkerlab.homology import GF2, QQ

R = make_relation("abcd", "1234", [
    ("a", "2"), ("a", "4"), ("b", "1"), ("b", "2"),
    ("c", "1"), ("c", "4"), ("d", "1"), ("d", "3"),
])
E = rectangle_complex(R)

for name, K in [("D(R)", dowker_complex(R)), ("D(R^T)", dowker_complex(transpose(R))), ("E(R)", E)]:
    print(name, homology(K).to_dict())

# a map is a quasi-isomorphism when its reduced mapping cone is acyclic over Z
print("pi quasi-iso:", is_quasi_isomorphism(pi(R, E)))
print("pi_hat quasi-iso:", is_quasi_isomorphism(pi_hat(R, E)))

for field in (QQ, GF2):
    for k in (0, 1):
        print(f"psi_* in degree {k} over {field.name}:", psi_star(R, k, field).to_list())

# torsion shows up over Z: a 6-vertex projective plane
RP2 = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 4, 5), (2, 3, 5), (1, 3, 5), (1, 3, 4),
]
P = from_facets([str(v) for v in range(6)], [[str(v) for v in f] for f in RP2])
print("RP^2 over Z:", homology(P).to_dict())
print("RP^2 over Z/2:", homology(P, coeff=GF2).to_dict())
