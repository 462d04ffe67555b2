import sys

from stickymass.cli import main

sys.exit(main())
