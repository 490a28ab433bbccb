# 核心模块初始化
from .config import ConfigManager, RunConfig
from .configuration import GopelTetrad, TwoTorsionLabel, WeberHexad
from .surface_lattice import SurfaceClass, pair
from .isometry_group import LatticeIsometry, KeumDataError, load_keum_actions
from .threefold_lattice import ThreefoldClass, restrict
from .report import Report, Status
from .utils import format_rational, get_file_hash, parse_rational

__all__ = [
    'ConfigManager',
    'RunConfig',
    'GopelTetrad',
    'TwoTorsionLabel',
    'WeberHexad',
    'SurfaceClass',
    'pair',
    'LatticeIsometry',
    'KeumDataError',
    'load_keum_actions',
    'ThreefoldClass',
    'restrict',
    'Report',
    'Status',
    'format_rational',
    'get_file_hash',
    'parse_rational',
]
