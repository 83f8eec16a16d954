"""Run the command line with ``python -m meanforce``."""

from meanforce.cli.main import main

raise SystemExit(main())
