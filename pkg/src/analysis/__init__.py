# Convergence-rate measurement, theoretical bounds and the mean-value witness
from .bounds import (RateBoundInputs, theoretical_bound, theoretical_bound_convex, theoretical_bound_iterate,
                     theoretical_bound_nonsmooth_sc, theoretical_bound_smooth_sc)
from .ivt import IvtCampaignResult, IvtWitness, RandomPolynomial, ivt_witness, run_ivt_campaign, verify_ivt
from .rates import GapSeries, IterateErrorSeries, fit_loglog_slope, iterate_error_series, optimality_gap_series
from .report import (DEFAULT_HORIZONS, SLOPE_WINDOWS, RateReport, RateSummary, regime_schedule, run_rate_check,
                     write_rate_report)

__all__ = [
    'RateBoundInputs', 'theoretical_bound', 'theoretical_bound_convex', 'theoretical_bound_iterate',
    'theoretical_bound_nonsmooth_sc', 'theoretical_bound_smooth_sc',
    'IvtCampaignResult', 'IvtWitness', 'RandomPolynomial', 'ivt_witness', 'run_ivt_campaign', 'verify_ivt',
    'GapSeries', 'IterateErrorSeries', 'fit_loglog_slope', 'iterate_error_series', 'optimality_gap_series',
    'DEFAULT_HORIZONS', 'SLOPE_WINDOWS', 'RateReport', 'RateSummary', 'regime_schedule', 'run_rate_check',
    'write_rate_report',
]
