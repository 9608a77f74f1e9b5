import sys

from relentbound.cli import main

sys.exit(main())
