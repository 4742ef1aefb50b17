from .channel_model import Channel, ParametricChannel, PatternAccess
from .diagnostics_model import Diagnostics, OverlapReport
