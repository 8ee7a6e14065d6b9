# python -m LatticeTetra

import sys

from .cli import main

sys.exit(main())

# vim:set ts=8 shiftwidth=8 softtabstop=8 noexpandtab :
