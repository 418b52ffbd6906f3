import sys

from chebpv.cli import main

sys.exit(main())
