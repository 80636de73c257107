# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

import sys

from natrep.interface.cli import dispatch

if __name__ == "__main__":
    sys.exit(dispatch(sys.argv[1:]))
