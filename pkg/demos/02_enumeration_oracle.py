"""The backtracking oracle: list walks explicitly, then filter by class.

Every other engine in the package is validated against these enumerations.

Run: python demos/02_enumeration_oracle.py
"""

from trailcounts import (
    WalkClass,
    bowtie_graph,
    count_closed_euler_trails,
    count_hamiltonian_cycles_through,
    cycle_graph,
    enumerate_walks,
    petersen_graph,
    trail_edge_set_histogram,
)

c4 = cycle_graph(4)

print("all walks of length 3 from 1 to 2 on the 4-cycle:")
for seq in enumerate_walks(c4, 3, 1, 2, WalkClass.WALK):
    print("  ", "-".join(map(str, seq)))

print("trails (no repeated edge):", enumerate_walks(c4, 3, 1, 2, WalkClass.TRAIL))
print("paths  (no repeated vertex):", enumerate_walks(c4, 3, 1, 2, WalkClass.PATH))
# DISTINCT_NON_INITIAL allows the start vertex to be revisited; it is the
# class the literal destination-vertex observable counts (see demo 03)
print(
    "distinct-non-initial:",
    enumerate_walks(c4, 3, 1, 2, WalkClass.DISTINCT_NON_INITIAL),
)

# Eulerian circuits: closed trails using every edge once, each traversal
# direction counted separately.
print("\nclosed Eulerian trails on the 4-cycle from vertex 1:", count_closed_euler_trails(c4, 1))

bowtie = bowtie_graph()
print("closed Eulerian trails on the bowtie from its center:", count_closed_euler_trails(bowtie, 1))
print("...but they all traverse the same edge set:")
for edge_set, count in trail_edge_set_histogram(bowtie, 6, 1, 1).items():
    print("  ", sorted(edge_set), "->", count, "trails")

# Hamiltonian cycles by exhaustive backtracking.
print("\nHamiltonian cycles through vertex 1:")
print("  4-cycle:", count_hamiltonian_cycles_through(c4, 1), "undirected,",
      count_hamiltonian_cycles_through(c4, 1, directed=True), "directed")
print("  petersen:", count_hamiltonian_cycles_through(petersen_graph(), 1))
