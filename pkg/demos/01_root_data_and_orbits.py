# %% [markdown]
# Root data, alcove vertices and the hull test
#
# Everything is exact: vectors are tuples of Fractions, printed as "p/q".

# %%
from admperm import qq
from admperm.finite_weyl import orbit, stabilizer_simple_indices
from admperm.rootdata import alcove_vertices, get_root_datum, in_hull

e6 = get_root_datum("E6")
print(e6, "marks", e6.marks)
mu = e6.rho(1)
print("mu =", qq.fmt_vec(mu))

# %%
# the 27 points of W.mu, and which simple reflections fix mu
pts = orbit(e6, mu)
print(len(pts), "orbit points; I(mu) =", sorted(stabilizer_simple_indices(e6, mu)))

# %%
# vertices a_i = rho_i / n_i of the base alcove, plus the origin
for i, a in enumerate(alcove_vertices(e6), start=1):
    print(f"a_{i}", " ".join(qq.fmt_vec(a)))

# %%
# hull membership goes through the dominant representative
v = qq.vec(["-1/2", "0", "0", "0", "0", "-1/6", "-1/6", "1/6"])
cert = in_hull(e6, v, mu)
print(cert.to_json())
print("2 mu in P_mu?", in_hull(e6, qq.scale(2, mu), mu) is not None)
