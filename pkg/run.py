# run.py
"""Entry point for the dominating-set lab.

Equivalent to the installed ``domset-lab`` script:

    python run.py solve --in graph.txt --algo bb
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
