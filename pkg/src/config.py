# Global numerical configuration shared by the library and the CLI
# Adjust these values to trade accuracy for speed; every consumer also
# accepts per-call keyword overrides

NUMERICS = {
    "pole_guard": 1e-14,  # evaluate() refuses |lam - a| <= pole_guard * (1 + |a|)
    "nr_grid": 512,  # equispaced theta samples for the numerical radius scan
    "nr_tol": 1e-9,  # absolute tolerance of the numerical radius
    "nr_max_iter": 200,  # golden-section iteration cap per local maximum
    "w_inflation": 1e-10,  # relative inflation of w(.) inside upper-bound formulas
    "svd_max_dim": 64,  # spectral norm by full SVD up to this dimension
    "power_tol": 1e-12,  # relative tolerance of the Gram power iteration
    "power_max_iter": 10000,  # power iteration cap
}

COMPANION = {
    "max_dimension": 4096,  # largest block matrix build() will allocate
}

SPECTRUM = {
    "tol": 1e-8,  # accepted backward error sigma_min / scale
    "pole_exclusion": 1e-8,  # candidates within pole_exclusion * (1 + |a|) are rejected
    "coalesce": 1e-9,  # accepted eigenvalues closer than this are merged
    "containment_tol": 1e-6,  # relative to 1 + |lam|
    "numerator_pole_tol": 1e-8,  # numerator roots this close to a pole are dropped
    "regularity_probes": 5,  # random probe points for the non-regular heuristic
    "regularity_tol": 1e-12,  # backward error below which det R(probe) counts as zero
    "regularity_seed": 20240611,  # fixed seed for the probe points
}

Q_ROOT = {
    "grid_points": 1024,  # logarithmic scan points on (gamma_max, X]
    "rel_width": 1e-13,  # relative width of the final bisection cell
    "bracket_limit": 1e300,  # BracketFailure beyond this upper bracket
    "max_iter": 500,  # bisection iteration cap
}

REPORT = {
    "decimals": 2,  # table-mode rounding (half-even)
    "soundness_slack": 1e-7,  # bound >= oracle - slack counts as sound
}

BENCH = {
    "count": 10,
    "seed": 42,
    "p": 2,  # matrix size
    "m": 2,  # polynomial degree
    "poles": 2,  # distinct poles per instance
    "max_order": 2,  # highest pole power
    "scale": 5.0,  # coefficient magnitude cap
    "pole_radius": 3.0,  # pole magnitude cap
    "threads_env": "RATBOUND_THREADS",  # caps the worker pool
}

EXIT_CODES = {
    "ok": 0,
    "mismatch": 1,  # report: a reproduced cell is outside its tolerance
    "parse": 2,
    "validation": 3,
    "non_regular": 4,
    "numeric": 5,
}
