from .models import (
    Channel,
    Diagnostics,
    OverlapReport,
    ParametricChannel,
    PatternAccess
)
from .partition import partition_by_paving
from .synthesize import STRATEGIES, synthesize, synthesize_all
from .diagnostics import check_overlap, diagnose, lint_paving, overhead
from .parametric import parametric_channel
from .rewrite import rewrite_program
