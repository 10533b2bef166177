"""Module entry point: python -m janostab."""

from .cli import main

raise SystemExit(main())
