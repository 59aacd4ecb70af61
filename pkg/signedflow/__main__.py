import sys
from signedflow.cli.main import main

sys.exit(main())
