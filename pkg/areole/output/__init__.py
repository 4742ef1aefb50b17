from .spec_document import (
    ChannelSpec,
    MatrixSpec,
    SpecDocument,
    build_spec_document,
    dump_spec,
    load_spec
)
from .report import render_report
