"""Structural zero eigenvectors and the Laplacian theorem suites.

Small-support vectors are annihilated by the out-adjacency contraction,
giving exact zero eigenpairs; vectors supported on an edge minus one head
vertex usually do the same, unless another edge collides with the support.
The Laplacian checkers certify the standing eigenpairs instance by
instance.
"""

from dhspec import (
    certificate_record,
    colliding_edges,
    common_vertex_zero_pair,
    edge_zero_vector,
    laplacian_theorem_checks,
    signless_theorem_checks,
    support_zero_vector,
    validate,
)

hg = validate(6, [({1, 2, 3}, {4, 5})])
print("single 5-uniform edge {1..5} with tail {1,2,3} on six vertices")

vec, cert = edge_zero_vector(hg, 0, h=[4], coefficients={1: 2, 2: 3, 3: 5, 4: 7})
print(f"edge-minus-head vector: {vec.vector}")
print(f"  certificate: {certificate_record(cert)}")

vec2, cert2 = support_zero_vector(hg, {2: 5, 3: 6, 4: 7})
print(f"small-support vector:  {vec2.vector}")
print(f"  certificate: {certificate_record(cert2)}")

# A second edge whose vertices fit inside the support plus one of its own
# tail vertices re-activates a row, and the certificate reports it.
clash = validate(4, [({1}, {2, 3}), ({4}, {1, 2})])
vec3, cert3 = edge_zero_vector(clash, 0, h=[2], coefficients={1: 1, 2: 1})
print(f"\ncolliding instance: support {sorted(vec3.support)}, "
      f"collisions {colliding_edges(clash, vec3.support)}")
print(f"  residual {cert3.residual} (exact: {cert3.exact})")

# Laplacian theorem suite on a mixed hypergraph.
mixed = validate(5, [({1, 2}, {3}), ({1, 4}, {2, 5})])
lap_report = laplacian_theorem_checks(mixed)
print(f"\nlaplacian checks: all-ones zero pair exact = "
      f"{lap_report.ones_certificate.exact}, disk bound "
      f"{lap_report.disk_modulus_bound} <= {lap_report.disk_bound_limit}: "
      f"{lap_report.disk_bound_ok}")
if lap_report.basis_pairs:
    holds = sum(1 for p in lap_report.basis_pairs if p.exact)
    print(f"  basis eigenpairs exact at {holds}/{len(lap_report.basis_pairs)} vertices")

# The signless variant: shared vertex gives an exact zero pair for even rank.
shared = validate(5, [({1, 2}, {3, 4}), ({1, 3}, {2, 5})])
cert4 = common_vertex_zero_pair(shared)
print(f"\nshared-vertex signless pair: {certificate_record(cert4)}")
report = signless_theorem_checks(shared)
print(f"signless bounds match doubled degrees: {report.bounds_match_degrees}")
