"""Tour of the graph layer: text codec, inversions, joins, acyclicity.

Run:  python demos/01_graphs_and_inversions.py
"""

from invlab import (
    VertexFamily,
    decode,
    dijoin,
    encode,
    induced,
    invert,
    is_acyclic,
    njoin,
    reverse,
    topological_order,
)

# Tournaments are written "n:bits", one bit per pair in lexicographic order
# (0,1),(0,2),...,(n-2,n-1); bit 1 orients the pair from the smaller vertex.
c3 = decode("3:101")
print("the directed triangle:", encode(c3), "arcs:", c3.arcs())
print("acyclic?", is_acyclic(c3))

# Oriented graphs that are not tournaments list their arcs explicitly.
path = decode("3;0>1,1>2")
print("oriented path:", encode(path), "acyclic?", is_acyclic(path))

# Inverting a vertex set reverses every arc with both ends inside it.
# A family of sets is applied set by set; the order never matters.
family = VertexFamily.from_sets(3, [[0, 1]])
after = invert(c3, family)
print("invert {0,1} in the triangle:", encode(after))
print("resulting vertex order:", topological_order(after))

# Inverting twice restores the original graph.
print("involution check:", invert(after, family) == c3)

# The dijoin glues two graphs with all cross arcs pointing left to right.
j = dijoin(c3, c3)
print("C3 -> C3:", encode(j))
print("first block:", encode(induced(j, range(3))), "second block:", encode(induced(j, range(3, 6))))

# n-joins fold the dijoin left to right; joins of transitive pieces stay acyclic.
t2 = decode("2:1")
print("three stacked edges:", encode(njoin([t2, t2, t2])), "acyclic?", is_acyclic(njoin([t2, t2, t2])))

# Reversal flips every arc and keeps decycling families unchanged.
print("reversed triangle:", encode(reverse(c3)))
