# %% [markdown]
# An E6 element that is permissible but not admissible
#
# x = w2 t_mu w1^-1 with mu = rho_1.

# %%
from admperm import qq
from admperm.affine_weyl import finite, translation, wa_part, aff_reduced_word
from admperm.finite_weyl import bruhat_le, from_word, matrix_of
from admperm.kr_sets import haines_necessary, helam_pair, is_permissible
from admperm.rootdata import get_root_datum

d = get_root_datum("E6")
mu = d.rho(1)
w1 = from_word(d, [2, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1])
w2 = from_word(d, [4, 5, 6, 2, 4, 5])
x = finite(w2) * translation(d, mu) * finite(w1.inverse())
x

# %%
# the finite part, times 4 so the entries are integers
for row in matrix_of(w2 * w1.inverse()):
    print(" ".join(f"{int(4 * c):3d}" for c in row))

# %%
ok, cert = is_permissible(d, mu, x)
for i, (a, v, c) in enumerate(cert.vertices, start=1):
    print(f"x(a_{i}) - a_{i} =", " ".join(qq.fmt_vec(v)))

# %%
# admissibility: x = z2 t_mu z1^-1 with z1 minimal, admissible iff z2 <= z1
pair = helam_pair(d, mu, x)
print("z1 = w1:", pair.z1 == w1, " z2 = w2:", pair.z2 == w2)
print("w2 <= w1:", bruhat_le(w2, w1))
print("trace:", pair.trace)

# %%
# the necessary condition x <= t_x(0) fails as well
print("x <= t_mu:", haines_necessary(d, mu, x))
print("reduced word of the W_a part of t_mu:", aff_reduced_word(wa_part(translation(d, mu))))
