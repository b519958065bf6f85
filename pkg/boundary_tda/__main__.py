"""Allow ``python -m boundary_tda``."""

from boundary_tda.cli import main

raise SystemExit(main())
