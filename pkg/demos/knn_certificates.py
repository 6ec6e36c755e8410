"""
Why reg(I_{K_{n,n}}) >= n
=========================

For alpha = (x_1 ... x_n y_1 ... y_n)^(n-1) the fibre complex has 2n minimal
non-faces: the n row products and the n column products.  On the Taylor
simplex over those generators, the faces whose lcm misses some variable form
a shellable sphere, which forces a nonzero Betti number in degree n^2.
"""

from toricreg.homology import is_shelling, reduced_homology_dims
from toricreg.knn import (KnnInstance, shelling_order, taylor_faces_below_w, taylor_restricted_complex,
                          verify_nonvanishing, verify_taylor)

for n in (2, 3):
    rep = verify_nonvanishing(KnnInstance(n))
    print(f"n={n}: beta_(2n-2, n^2) of I(Gamma) = {rep.hochster_beta},"
          f" toric beta_(n^2-2n, alpha) = {rep.toric_beta}, passed = {rep.passed}")

# %%
# For larger n the fibre complex is too big to handle here, but the Taylor
# side of the argument is cheap.  The closed-form facets agree with a direct
# scan of all subsets of generators.
inst = KnnInstance(4)
delta = taylor_restricted_complex(inst)
assert delta == taylor_faces_below_w(inst)
print("shelling:", is_shelling(delta, shelling_order(inst)).shelling)
print("homology:", {d: h for d, h in reduced_homology_dims(delta).items() if h})
print(verify_taylor(inst).to_json())
