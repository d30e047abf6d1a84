from .core.logging import logger
from .config.default import merge_config, get_config
from .errors import (OvertopError, DomainError, ParseError, ComputationError,
                     NoCommonRootError, AmbiguousRootError, SelectionError, ConvergenceError)
from .core.numeric import (Surd2, surd_to_bigreal, working_precision, parse_rational,
                           parse_surd, parse_bigreal)
from .core.poly import (Polynomial, gcd, sturm_chain, sturm_count, isolate_roots, refine_root,
                        parse_poly, parse_poly_file)
from .top.engine import (OverlapSpec, monic_transform, lop1_delta, top_delta, reduce_chain,
                         shared_root)
from .solvers.closed_form import (depress_quartic, resolvent_cubic, solve_quartic_ferrari,
                                  quartic_closed_form_A, solve_polynomial)
from .sangaku.symmetric import symmetric_quartic, solve_symmetric
from .sangaku.asymmetric import (TriangleConfig, make_triangle, derived_constants,
                                 ellipse_center, sextic_coeffs, quartic_in_r, rho,
                                 solve_asymmetric, uniqueness_sweep)
from .sangaku.oracle import cross_check
from .quintic.lab import (bring_jerrard_from_triangle, solvability_search,
                          solvable_quintic_roots, c12_demo)
from .utils.visualization import render_figure
