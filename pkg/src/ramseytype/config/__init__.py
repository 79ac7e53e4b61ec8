# ramseytype - Config Module

from .loader import ConfigLoader
from .settings import HarnessSettings, SearchLimits, Settings, WitnessSettings

__all__ = [
    'ConfigLoader',
    'Settings',
    'SearchLimits',
    'WitnessSettings',
    'HarnessSettings',
]
