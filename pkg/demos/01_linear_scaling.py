# %% [markdown]
# # Turning ranks and packages into scores
#
# Every score in qscore is one straight line: pick two points, map one
# interval onto another. Ranks run backwards (rank 1 is best), so the
# worst rank is the *input minimum* and rank 1 the *input maximum*.

# %%
import numpy as np

from qscore import ScaleSpec, linear_scale, score_ir, score_po, score_sphe

ranks = ScaleSpec(input_min=200, input_max=1, scaled_min=1, scaled_max=10)
print("rate   =", ranks.rate)
print("offset =", ranks.offset)

# %%
# The same line evaluated on a whole array of ranks.
r = np.array([1, 2, 10, 50, 100, 150, 200])
for rank, qs in zip(r, linear_scale(r, ranks)):
    print(f"rank {rank:>3} -> {qs:6.3f}")

# %% [markdown]
# ## The three scorers
#
# Higher-education students get 1-10 from their university's rank. Students
# who took a job get 1-5 from the employer's rank plus 0-5 from where their
# package sits inside the cohort's package range. Anything unranked is 0.

# %%
print("university rank 100 of 200:", score_sphe(100, 200))
print("unranked university       :", score_sphe(None, 200))
print("company rank 25 of 50     :", score_ir(25, 50))
print("package 6.5 in [3, 10]    :", score_po(6.5, 3.0, 10.0))
print("every package equal       :", score_po(7.0, 7.0, 7.0))
