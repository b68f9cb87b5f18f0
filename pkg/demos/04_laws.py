"""Additive and product laws on generated pairs, with hypothesis gating."""
from ginv import Matrix
from ginv.checks import check_laws
from ginv.generators import GenSpec, gen_additive_pair, gen_product_pair

spec = GenSpec(dim=4, index=2, seed=7)

a, b, label = gen_additive_pair(spec)
print(label, [check_laws("additive", a, b, m).verdict.value for m in (1, 2, 3)])

for family in (1, 2):
    a, b, label = gen_product_pair(spec, family=family)
    print(label, [check_laws("product", a, b, m).verdict.value for m in (1, 2, 3)])

# A pair that does not commute is not a counterexample, just out of scope.
r = check_laws("product", Matrix([[1, 1], [0, 0]]), Matrix([[0, 0], [1, 0]]), 1)
print(r.verdict.value, "-", r.witness["hypothesis"])
