import sys

from gaussabund.cli import main

sys.exit(main())
