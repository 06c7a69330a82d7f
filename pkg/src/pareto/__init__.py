# Dominance filtering, effort sweeps and front artifacts
from .artifacts import front_frame, front_svg, write_front_csv, write_front_svg, write_fronts
from .front import (Front, FrontMetrics, FrontPoint, distance_to_segment, dominates, flag_nondominated,
                    front_metrics, nondominated_filter)
from .sweep import SweepCell, sweep, sweep_cells

__all__ = [
    'front_frame', 'front_svg', 'write_front_csv', 'write_front_svg', 'write_fronts',
    'Front', 'FrontMetrics', 'FrontPoint', 'distance_to_segment', 'dominates', 'flag_nondominated',
    'front_metrics', 'nondominated_filter',
    'SweepCell', 'sweep', 'sweep_cells',
]
