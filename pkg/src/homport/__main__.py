import sys

from homport.cli import main

sys.exit(main())
