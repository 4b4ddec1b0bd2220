"""
Counting K-sets
===============

The positions the solver stores are the K-sets.  Here we count them on
spiders, compare with the vertex-cover bound, and look at the witnesses.
"""

from nodekayles import check_spider, check_vc_bound, count_ksets, enumerate_ksets, gnp, spider, witness_triple

# spiders hit 3^k + 4k exactly once there are two legs
for k in range(1, 7):
    r = check_spider(k)
    print(f"spider({k}): kappa {r.kappa}, closed form {r.expected}, holds {r.holds}")

# the bound 3^tau + n - tau - 2^tau on some random graphs
print()
for seed in range(5):
    g = gnp(12, 0.3, seed)
    r = check_vc_bound(g)
    print(f"gnp(12, 0.3, {seed}): kappa {r.kappa:4d}  tau {r.tau}  bound {r.bound}")

# every K-set comes with an independent set that cuts it out
g = spider(2)
print("\nspider(2) K-sets and one witness each:")
for w in enumerate_ksets(g):
    t = witness_triple(g, w)
    print(f"  W={sorted(w)}  X={sorted(t.x)}  N(X)={sorted(t.separator)}")
print("total", count_ksets(g))
