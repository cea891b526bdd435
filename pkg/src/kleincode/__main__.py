import sys

from kleincode.cli import main

sys.exit(main())
