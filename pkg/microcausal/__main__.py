import sys

from microcausal.main import main

sys.exit(main())
