"""A small randomized verification run, the same machinery the CLI harness uses."""
from collections import Counter

from ginv.generators import GenSpec
from ginv.suite import build_report, run_suite

spec = GenSpec(dim=4, index=3, seed=1)
results = run_suite(spec, trials=10, m_list=[1, 2])
report = build_report(results, seed=1, trials=10, dim_max=4, index_max=3, m_list=[1, 2], entry_bound=3)

print(report["summary"])
print(Counter(r.check_name for r in results).most_common(5))

# Any failure carries the first failing equation with both sides.
for r in results:
    if not r.passed:
        print(r.to_json()["witness"]["equation"])
