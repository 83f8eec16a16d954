"""CSV emission."""

import sys
from pathlib import Path
from typing import TextIO

import pandas as pd

FLOAT_FORMAT = "%.17g"


def write_table(frame: pd.DataFrame, path: Path | None = None, stream: TextIO | None = None) -> None:
    """Write a table as CSV with a header, LF line endings and 17 significant digits.

    Args:
        frame: Table to write.
        path: Destination file. Writes to ``stream`` when None.
        stream: Text stream used when no path is given. Defaults to standard output.

    """
    options = {"index": False, "float_format": FLOAT_FORMAT, "na_rep": "nan", "lineterminator": "\n"}
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, **options)
    else:
        frame.to_csv(stream or sys.stdout, **options)
