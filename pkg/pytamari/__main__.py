import sys

from pytamari.cli import main

sys.exit(main())
