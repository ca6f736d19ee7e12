import sys

from qecfom.cli import main

sys.exit(main())
