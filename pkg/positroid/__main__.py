# positroid/__main__.py
import sys

from positroid.main import main

sys.exit(main())
