"""The twelve images of an additive plane partition under axis permutations and complement."""
from tomokron.fixtures import PLANE_ADDITIVE
from tomokron.tables import format_matrix, t_orbit
from tomokron.tomography import is_additive

for label, m in t_orbit(PLANE_ADDITIVE):
    print(label, "additive" if is_additive(m) is not None else "NOT additive")
    print(format_matrix(m.rows))
    print()
