#!/usr/bin/python3
import sys
from areole.cli.run import main

sys.exit(main())
