"""Kronecker coefficients along an additive direction, and the lattice sets behind them."""
from tomokron.fixtures import NO_ADDITIVE_DIRECTION, PLANE_ADDITIVE
from tomokron.stability import lattice_sequence, stability_sequence, stembridge_condition
from tomokron.tomography import AdditiveTriple, young_binary

d = AdditiveTriple.from_matrix(young_binary((2, 1))).as_tuple()
print("direction", d)
print(stability_sequence((2, 1), (2, 1), (2, 1), *d, 6).to_text())
print()

t = AdditiveTriple.from_matrix(PLANE_ADDITIVE)
print("lattice counts along", t.as_tuple())
print(lattice_sequence((), (), (), *t.as_tuple(), PLANE_ADDITIVE, 4).to_json())
print()

r = stembridge_condition(*NO_ADDITIVE_DIRECTION, 4)
print("inner products", r.values, "| some table with this pi exists:", r.class_nonempty)
