"""Exact arithmetic for the two sextic parametrizations of rational
perfect-cuboid solutions: coefficient functions, resolvent cubic-to-sextic
reduction, witness lifting, completion systems, quotient-ring identity
checks, and a height-bounded search harness."""

from .coeffs import (CoeffSet, Cubic, DENOMINATOR_FACTORS, E21_CORRECTED,
                     E21_PRINTED, E21_PRINTED_R, E21_VARIANTS, ParamPoint,
                     SingularityReport, cubic_d, cubic_x, eval_coeffs,
                     singular_factors)
from .cubics import (DepressedCubic, RationalityVerdict, ReducedTriple,
                     analyze_cubic, d_from_triple, d_param, depress,
                     lift_roots, roots_from_w, sextic_poly,
                     w_from_ordered_roots)
from .errors import (BadModulus, BothZero, CheckpointCorrupt,
                     CheckpointMismatch, ConfigInvalid, CuboidError,
                     DegenerateDepression, EmptyInterval, LeadingZero,
                     ModulusMismatch, NegativeInput, NoRationalWitness,
                     NotAWitness, NotReducedTriple, SingularCompletion,
                     SingularPoint, SingularSystem, WDegenerate,
                     ZeroDenominator, ZeroElement, ZeroPolynomial)
from .parametrize import (Instance, SexticInstance, Solution,
                          VerificationReport, build_instance, complete_first,
                          complete_second, d1_explicit, d2_explicit,
                          d_pipeline, param_first, param_second,
                          ring_verify_identities, verify_solution)
from .polynomials import (DEFAULT_HEIGHT_BOUND, IsolatingInterval, Poly,
                          RationalRootResult, format_poly, isolate_real_roots,
                          poly_from_roots, poly_gcd, rational_roots,
                          rational_roots_by_divisors, refine_interval,
                          root_bound, square_free_decomposition,
                          square_free_part, sturm_chain)
from .quotient import (RingElem, SplitEvent, linsolve3, ring_generator,
                       ring_make)
from .rationals import (format_rational, height, make_rational,
                        parse_rational, rational_sqrt, simplest_in_interval)
from .search import (ALL_STATUSES, HitRecord, SearchConfig, degree_probe,
                     enumerate_rationals, evaluate_cell, scan, scan_to_file)

__version__ = "1.0.0"
