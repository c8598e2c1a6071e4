"""Formal concepts of the example, in lectic order, and how they become facets."""

from dowkerlab import brute_force_concepts, enumerate_concepts, make_relation, rectangle_complex
from dowkerlab.dowker import pair_label

R = make_relation("abcd", "1234", [
    ("a", "2"), ("a", "4"), ("b", "1"), ("b", "2"),
    ("c", "1"), ("c", "4"), ("d", "1"), ("d", "3"),
])

concepts = enumerate_concepts(R)
for c in concepts:
    tag = "proper" if c.is_proper() else "boundary"
    print(f"{''.join(sorted(c.extent)) or '-':5} x {''.join(sorted(c.intent)) or '-':5} {tag}")

assert set(concepts) == set(brute_force_concepts(R))

# every proper concept is a maximal rectangle, hence a facet of E(R)
facets = {
    tuple(sorted(pair_label(x, y) for x in c.extent for y in c.intent))
    for c in concepts
    if c.is_proper()
}
print("facets of E(R) match proper concepts:", facets == set(rectangle_complex(R).facets))
