"""Allow ``python -m rocmetrics``."""

import sys

from .cli import main

sys.exit(main())
