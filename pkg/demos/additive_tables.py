"""Walk through the 3x3 trio, the non-additive 5x5 table and its certificate."""
from tomokron.fixtures import (OBSTRUCTION_PERTURBATION, PLANE_ADDITIVE, PLANE_MINIMAL_NOT_UNIQUE,
                               PLANE_UNIQUE_NOT_MINIMAL, UNIQUE_NOT_ADDITIVE)
from tomokron.tables import format_matrix
from tomokron.tomography import additivity_profile, check_perturbation, is_additive

for name, m in [("minimal, not pi-unique", PLANE_MINIMAL_NOT_UNIQUE),
                ("pi-unique, not minimal", PLANE_UNIQUE_NOT_MINIMAL),
                ("additive", PLANE_ADDITIVE)]:
    prof = additivity_profile(m)
    print(name)
    print(format_matrix(m.rows))
    print({k: v for k, v in prof.items() if k != "witness"}, prof["witness"])
    print()

print("5x5 additive?", is_additive(UNIQUE_NOT_ADDITIVE) is not None)
cert = check_perturbation(UNIQUE_NOT_ADDITIVE.scaled(2), OBSTRUCTION_PERTURBATION, 1)
print("certificate valid:", bool(cert))
print("pi(2E)    ", cert.pi_before)
print("pi(2E - X)", cert.pi_after)
