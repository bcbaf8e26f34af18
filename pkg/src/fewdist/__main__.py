import sys

from fewdist.cli import main

sys.exit(main())
