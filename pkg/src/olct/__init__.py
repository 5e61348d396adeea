"""Offset linear canonical transform engines, quadrature functionals,
and uncertainty-principle certificates for sampled 1-D complex signals."""

from .core import (OlctParams, induced_grid, inverse_transform, kernel,
                   transform_b0, transform_direct, transform_fast,
                   validate_params)
from .errors import (BadSpec, DegenerateParams, DomainError, GridContainsZero,
                     GridNotPow2, LambdaOutOfRange, NegativeB, NotNormalized,
                     OlctError, SymplecticViolation, ZeroSignal)
from .estimator import OlctTransformer
from .io import (export_report_csv, export_signal_csv, read_report,
                 read_signal, report_to_dict, signal_from_dict, signal_to_dict,
                 write_report, write_signal)
from .measures import (IntervalSet, abs_squared, beurling_functional,
                       density_of, l2_norm, log_moment, mean_variance,
                       shannon_entropy, tail_energy, weighted_moment)
from .sampling import Density, Grid, SampledSignal
from .signals import BatteryEntry, SignalSpec, default_battery, generate
from .specfun import PittConstant, digamma, gamma, log_gamma, pitt_constant
from .suite import (Certificate, SuiteConfig, nazarov_report, run_suite,
                    verify_beurling, verify_entropic, verify_hardy,
                    verify_heisenberg, verify_logarithmic, verify_pitt)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
