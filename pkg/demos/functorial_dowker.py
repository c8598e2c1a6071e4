"""A morphism of relations and the two squares it induces."""

from dowkerlab import check_functorial_dowker, check_naturality, dowker_map, make_relation
from dowkerlab.homology import GF2, QQ, homology_map_matrix
from dowkerlab.relation import random_morphism_from, transpose_morphism

R = make_relation("abcd", "1234", [
    ("a", "2"), ("a", "4"), ("b", "1"), ("b", "2"),
    ("c", "1"), ("c", "4"), ("d", "1"), ("d", "3"),
])
# the target is the image of R plus a little noise; with this seed the hole survives
f = random_morphism_from(R, 0, noise=0.1)
print("source:", sorted(f.source.pairs))
print("target:", sorted(f.target.pairs))
print("f1:", f.f1)
print("f2:", f.f2)

rep = check_naturality(f)
print(f"strict squares: {rep.checked} vertex equalities, passed={rep.passed}")

for k in (0, 1):
    print(f"H_{k}(D(f)) =", homology_map_matrix(dowker_map(f), k).to_list())
    print(f"H_{k}(D(f^T)) =", homology_map_matrix(dowker_map(transpose_morphism(f)), k).to_list())

for field in (QQ, GF2):
    ok = all(check_functorial_dowker(f, k, field) for k in (0, 1, 2))
    print(f"homology square commutes over {field.name}:", ok)
