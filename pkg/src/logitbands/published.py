"""Published reference values for the LaVelle mutagenicity example and the
logistic coverage study, used by the ``example`` report and the long-running
simulation sweep.
"""

from __future__ import annotations

# Logistic fit to the bundled data set.
BETA_HAT = (-0.789, 0.854)
COVARIANCE = ((0.017, -0.005), (-0.005, 0.005))
U_A = (0.163, -0.109)
U_B = (0.106, 0.0234)
PHI = 0.809

# Two-sided 95% critical values; None is the whole real line.
TWO_SIDED_95 = {
    None: 2.447,
    (-1.3, 2.0): 2.344,
    (-1.3, 0.8): 2.206,
    (-1.3, -0.2): 2.067,
}

# Embedding-procedure values reported alongside for comparison only.
EMBEDDING_TWO_SIDED_95 = {
    None: 2.447,
    (-1.3, 2.0): 2.445,
    (-1.3, 0.8): 2.274,
    (-1.3, -0.2): 2.170,
}

ONE_SIDED_95 = {
    (-1.3, 2.0): 2.049,
    (-1.3, 0.8): 1.899,
    (-1.3, -0.2): 1.754,
}

SIM_BETAS = ((-2.0, 0.3), (0.0, 1.5), (2.0, 5.0), (-0.2, -0.3), (-2.0, -4.0))
SIM_SIZES = (25, 50, 100, 150)
SIM_ALPHAS = (0.01, 0.05, 0.10)
INTERVAL_KINDS = ("narrow", "wide", "unrestricted")

# Interval endpoints for each true coefficient pair.
INTERVALS = {
    (-2.0, 0.3): {"narrow": (3.842, 9.491), "wide": (-0.657, 13.991), "unrestricted": (-70.086, 83.420)},
    (0.0, 1.5): {"narrow": (-0.565, 0.565), "wide": (-1.465, 1.465), "unrestricted": (-15.351, 15.351)},
    (2.0, 5.0): {"narrow": (-0.569, -0.231), "wide": (-0.839, -0.039), "unrestricted": (-5.005, 4.205)},
    (-0.2, -0.3): {"narrow": (-3.491, 2.158), "wide": (-7.991, 6.657), "unrestricted": (-77.420, 76.086)},
    (-2.0, -4.0): {"narrow": (-0.712, -0.288), "wide": (-1.049, 0.049), "unrestricted": (-6.256, 5.256)},
}

# Estimated coverage error, equally spaced design, two-sided bands.
# Key: (beta, n); value: {(interval kind, alpha): error}.
EQUAL_DESIGN_ERRORS = {
    ((-2.0, 0.3), 25): {
        ("narrow", 0.01): .001, ("narrow", 0.05): .020, ("narrow", 0.10): .061,
        ("wide", 0.01): .003, ("wide", 0.05): .018, ("wide", 0.10): .065,
        ("unrestricted", 0.01): .002, ("unrestricted", 0.05): .025, ("unrestricted", 0.10): .054,
    },
    ((-2.0, 0.3), 50): {
        ("narrow", 0.01): .004, ("narrow", 0.05): .038, ("narrow", 0.10): .076,
        ("wide", 0.01): .007, ("wide", 0.05): .032, ("wide", 0.10): .078,
        ("unrestricted", 0.01): .004, ("unrestricted", 0.05): .036, ("unrestricted", 0.10): .065,
    },
    ((-2.0, 0.3), 100): {
        ("narrow", 0.01): .006, ("narrow", 0.05): .044, ("narrow", 0.10): .086,
        ("wide", 0.01): .008, ("wide", 0.05): .040, ("wide", 0.10): .092,
        ("unrestricted", 0.01): .005, ("unrestricted", 0.05): .040, ("unrestricted", 0.10): .080,
    },
    ((-2.0, 0.3), 150): {
        ("narrow", 0.01): .007, ("narrow", 0.05): .049, ("narrow", 0.10): .097,
        ("wide", 0.01): .009, ("wide", 0.05): .046, ("wide", 0.10): .092,
        ("unrestricted", 0.01): .006, ("unrestricted", 0.05): .042, ("unrestricted", 0.10): .090,
    },
    ((0.0, 1.5), 25): {
        ("narrow", 0.01): .002, ("narrow", 0.05): .022, ("narrow", 0.10): .064,
        ("wide", 0.01): .002, ("wide", 0.05): .026, ("wide", 0.10): .058,
        ("unrestricted", 0.01): .006, ("unrestricted", 0.05): .029, ("unrestricted", 0.10): .059,
    },
    ((0.0, 1.5), 50): {
        ("narrow", 0.01): .005, ("narrow", 0.05): .036, ("narrow", 0.10): .082,
        ("wide", 0.01): .006, ("wide", 0.05): .035, ("wide", 0.10): .072,
        ("unrestricted", 0.01): .010, ("unrestricted", 0.05): .035, ("unrestricted", 0.10): .066,
    },
    ((0.0, 1.5), 100): {
        ("narrow", 0.01): .008, ("narrow", 0.05): .042, ("narrow", 0.10): .086,
        ("wide", 0.01): .009, ("wide", 0.05): .043, ("wide", 0.10): .094,
        ("unrestricted", 0.01): .008, ("unrestricted", 0.05): .042, ("unrestricted", 0.10): .076,
    },
    ((0.0, 1.5), 150): {
        ("narrow", 0.01): .006, ("narrow", 0.05): .044, ("narrow", 0.10): .097,
        ("wide", 0.01): .008, ("wide", 0.05): .051, ("wide", 0.10): .092,
        ("unrestricted", 0.01): .010, ("unrestricted", 0.05): .045, ("unrestricted", 0.10): .087,
    },
    ((2.0, 5.0), 25): {
        ("narrow", 0.01): .002, ("narrow", 0.05): .021, ("narrow", 0.10): .069,
        ("wide", 0.01): .004, ("wide", 0.05): .027, ("wide", 0.10): .058,
        ("unrestricted", 0.01): .005, ("unrestricted", 0.05): .024, ("unrestricted", 0.10): .057,
    },
    ((2.0, 5.0), 50): {
        ("narrow", 0.01): .004, ("narrow", 0.05): .036, ("narrow", 0.10): .080,
        ("wide", 0.01): .007, ("wide", 0.05): .044, ("wide", 0.10): .074,
        ("unrestricted", 0.01): .010, ("unrestricted", 0.05): .037, ("unrestricted", 0.10): .060,
    },
    ((2.0, 5.0), 100): {
        ("narrow", 0.01): .008, ("narrow", 0.05): .040, ("narrow", 0.10): .092,
        ("wide", 0.01): .007, ("wide", 0.05): .042, ("wide", 0.10): .084,
        ("unrestricted", 0.01): .009, ("unrestricted", 0.05): .037, ("unrestricted", 0.10): .076,
    },
    ((2.0, 5.0), 150): {
        ("narrow", 0.01): .010, ("narrow", 0.05): .048, ("narrow", 0.10): .101,
        ("wide", 0.01): .008, ("wide", 0.05): .049, ("wide", 0.10): .089,
        ("unrestricted", 0.01): .010, ("unrestricted", 0.05): .046, ("unrestricted", 0.10): .085,
    },
    ((-0.2, -0.3), 25): {
        ("narrow", 0.01): .001, ("narrow", 0.05): .020, ("narrow", 0.10): .065,
        ("wide", 0.01): .005, ("wide", 0.05): .024, ("wide", 0.10): .057,
        ("unrestricted", 0.01): .008, ("unrestricted", 0.05): .025, ("unrestricted", 0.10): .070,
    },
    ((-0.2, -0.3), 50): {
        ("narrow", 0.01): .005, ("narrow", 0.05): .039, ("narrow", 0.10): .073,
        ("wide", 0.01): .008, ("wide", 0.05): .034, ("wide", 0.10): .074,
        ("unrestricted", 0.01): .005, ("unrestricted", 0.05): .037, ("unrestricted", 0.10): .067,
    },
    ((-0.2, -0.3), 100): {
        ("narrow", 0.01): .008, ("narrow", 0.05): .043, ("narrow", 0.10): .092,
        ("wide", 0.01): .007, ("wide", 0.05): .036, ("wide", 0.10): .091,
        ("unrestricted", 0.01): .009, ("unrestricted", 0.05): .042, ("unrestricted", 0.10): .077,
    },
    ((-0.2, -0.3), 150): {
        ("narrow", 0.01): .007, ("narrow", 0.05): .046, ("narrow", 0.10): .102,
        ("wide", 0.01): .007, ("wide", 0.05): .041, ("wide", 0.10): .090,
        ("unrestricted", 0.01): .010, ("unrestricted", 0.05): .040, ("unrestricted", 0.10): .084,
    },
    ((-2.0, -4.0), 25): {
        ("narrow", 0.01): .002, ("narrow", 0.05): .019, ("narrow", 0.10): .063,
        ("wide", 0.01): .007, ("wide", 0.05): .025, ("wide", 0.10): .064,
        ("unrestricted", 0.01): .008, ("unrestricted", 0.05): .022, ("unrestricted", 0.10): .058,
    },
    ((-2.0, -4.0), 50): {
        ("narrow", 0.01): .005, ("narrow", 0.05): .032, ("narrow", 0.10): .063,
        ("wide", 0.01): .008, ("wide", 0.05): .037, ("wide", 0.10): .074,
        ("unrestricted", 0.01): .007, ("unrestricted", 0.05): .036, ("unrestricted", 0.10): .059,
    },
    ((-2.0, -4.0), 100): {
        ("narrow", 0.01): .008, ("narrow", 0.05): .042, ("narrow", 0.10): .095,
        ("wide", 0.01): .007, ("wide", 0.05): .039, ("wide", 0.10): .088,
        ("unrestricted", 0.01): .011, ("unrestricted", 0.05): .045, ("unrestricted", 0.10): .090,
    },
    ((-2.0, -4.0), 150): {
        ("narrow", 0.01): .011, ("narrow", 0.05): .046, ("narrow", 0.10): .091,
        ("wide", 0.01): .009, ("wide", 0.05): .045, ("wide", 0.10): .099,
        ("unrestricted", 0.01): .012, ("unrestricted", 0.05): .048, ("unrestricted", 0.10): .087,
    },
}

# Estimated coverage error at alpha = 0.05 for concentrated designs.
# Key: (beta, n); value: {(interval kind, design): error}.
CONCENTRATED_DESIGN_ERRORS = {
    ((-2.0, 0.3), 25): {
        ("narrow", "endpoint_concentrated"): .015, ("narrow", "center_concentrated"): .020,
        ("wide", "endpoint_concentrated"): .021, ("wide", "center_concentrated"): .023,
        ("unrestricted", "endpoint_concentrated"): .021, ("unrestricted", "center_concentrated"): .021,
    },
    ((-2.0, 0.3), 50): {
        ("narrow", "endpoint_concentrated"): .022, ("narrow", "center_concentrated"): .031,
        ("wide", "endpoint_concentrated"): .031, ("wide", "center_concentrated"): .038,
        ("unrestricted", "endpoint_concentrated"): .036, ("unrestricted", "center_concentrated"): .040,
    },
    ((-2.0, 0.3), 100): {
        ("narrow", "endpoint_concentrated"): .042, ("narrow", "center_concentrated"): .037,
        ("wide", "endpoint_concentrated"): .040, ("wide", "center_concentrated"): .046,
        ("unrestricted", "endpoint_concentrated"): .041, ("unrestricted", "center_concentrated"): .043,
    },
    ((-2.0, 0.3), 150): {
        ("narrow", "endpoint_concentrated"): .049, ("narrow", "center_concentrated"): .045,
        ("wide", "endpoint_concentrated"): .045, ("wide", "center_concentrated"): .044,
        ("unrestricted", "endpoint_concentrated"): .042, ("unrestricted", "center_concentrated"): .045,
    },
    ((0.0, 1.5), 25): {
        ("narrow", "endpoint_concentrated"): .025, ("narrow", "center_concentrated"): .018,
        ("wide", "endpoint_concentrated"): .021, ("wide", "center_concentrated"): .023,
        ("unrestricted", "endpoint_concentrated"): .016, ("unrestricted", "center_concentrated"): .022,
    },
    ((0.0, 1.5), 50): {
        ("narrow", "endpoint_concentrated"): .032, ("narrow", "center_concentrated"): .031,
        ("wide", "endpoint_concentrated"): .039, ("wide", "center_concentrated"): .038,
        ("unrestricted", "endpoint_concentrated"): .025, ("unrestricted", "center_concentrated"): .030,
    },
    ((0.0, 1.5), 100): {
        ("narrow", "endpoint_concentrated"): .042, ("narrow", "center_concentrated"): .037,
        ("wide", "endpoint_concentrated"): .040, ("wide", "center_concentrated"): .046,
        ("unrestricted", "endpoint_concentrated"): .040, ("unrestricted", "center_concentrated"): .048,
    },
    ((0.0, 1.5), 150): {
        ("narrow", "endpoint_concentrated"): .045, ("narrow", "center_concentrated"): .045,
        ("wide", "endpoint_concentrated"): .046, ("wide", "center_concentrated"): .044,
        ("unrestricted", "endpoint_concentrated"): .041, ("unrestricted", "center_concentrated"): .047,
    },
    ((2.0, 5.0), 25): {
        ("narrow", "endpoint_concentrated"): .022, ("narrow", "center_concentrated"): .018,
        ("wide", "endpoint_concentrated"): .015, ("wide", "center_concentrated"): .022,
        ("unrestricted", "endpoint_concentrated"): .016, ("unrestricted", "center_concentrated"): .021,
    },
    ((2.0, 5.0), 50): {
        ("narrow", "endpoint_concentrated"): .026, ("narrow", "center_concentrated"): .031,
        ("wide", "endpoint_concentrated"): .031, ("wide", "center_concentrated"): .037,
        ("unrestricted", "endpoint_concentrated"): .028, ("unrestricted", "center_concentrated"): .032,
    },
    ((2.0, 5.0), 100): {
        ("narrow", "endpoint_concentrated"): .041, ("narrow", "center_concentrated"): .037,
        ("wide", "endpoint_concentrated"): .039, ("wide", "center_concentrated"): .045,
        ("unrestricted", "endpoint_concentrated"): .043, ("unrestricted", "center_concentrated"): .045,
    },
    ((2.0, 5.0), 150): {
        ("narrow", "endpoint_concentrated"): .045, ("narrow", "center_concentrated"): .045,
        ("wide", "endpoint_concentrated"): .042, ("wide", "center_concentrated"): .043,
        ("unrestricted", "endpoint_concentrated"): .042, ("unrestricted", "center_concentrated"): .048,
    },
    ((-0.2, -0.3), 25): {
        ("narrow", "endpoint_concentrated"): .018, ("narrow", "center_concentrated"): .020,
        ("wide", "endpoint_concentrated"): .022, ("wide", "center_concentrated"): .028,
        ("unrestricted", "endpoint_concentrated"): .021, ("unrestricted", "center_concentrated"): .021,
    },
    ((-0.2, -0.3), 50): {
        ("narrow", "endpoint_concentrated"): .024, ("narrow", "center_concentrated"): .028,
        ("wide", "endpoint_concentrated"): .039, ("wide", "center_concentrated"): .035,
        ("unrestricted", "endpoint_concentrated"): .036, ("unrestricted", "center_concentrated"): .030,
    },
    ((-0.2, -0.3), 100): {
        ("narrow", "endpoint_concentrated"): .041, ("narrow", "center_concentrated"): .043,
        ("wide", "endpoint_concentrated"): .038, ("wide", "center_concentrated"): .042,
        ("unrestricted", "endpoint_concentrated"): .045, ("unrestricted", "center_concentrated"): .044,
    },
    ((-0.2, -0.3), 150): {
        ("narrow", "endpoint_concentrated"): .042, ("narrow", "center_concentrated"): .043,
        ("wide", "endpoint_concentrated"): .040, ("wide", "center_concentrated"): .046,
        ("unrestricted", "endpoint_concentrated"): .040, ("unrestricted", "center_concentrated"): .049,
    },
    ((-2.0, -4.0), 25): {
        ("narrow", "endpoint_concentrated"): .018, ("narrow", "center_concentrated"): .020,
        ("wide", "endpoint_concentrated"): .016, ("wide", "center_concentrated"): .028,
        ("unrestricted", "endpoint_concentrated"): .021, ("unrestricted", "center_concentrated"): .025,
    },
    ((-2.0, -4.0), 50): {
        ("narrow", "endpoint_concentrated"): .024, ("narrow", "center_concentrated"): .028,
        ("wide", "endpoint_concentrated"): .029, ("wide", "center_concentrated"): .035,
        ("unrestricted", "endpoint_concentrated"): .039, ("unrestricted", "center_concentrated"): .042,
    },
    ((-2.0, -4.0), 100): {
        ("narrow", "endpoint_concentrated"): .041, ("narrow", "center_concentrated"): .043,
        ("wide", "endpoint_concentrated"): .034, ("wide", "center_concentrated"): .042,
        ("unrestricted", "endpoint_concentrated"): .040, ("unrestricted", "center_concentrated"): .047,
    },
    ((-2.0, -4.0), 150): {
        ("narrow", "endpoint_concentrated"): .041, ("narrow", "center_concentrated"): .044,
        ("wide", "endpoint_concentrated"): .042, ("wide", "center_concentrated"): .046,
        ("unrestricted", "endpoint_concentrated"): .042, ("unrestricted", "center_concentrated"): .049,
    },
}
