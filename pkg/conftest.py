import os
import sys
from pathlib import Path

# The Django apps live as top-level modules under supercong/ (as manage.py sees them).
sys.path.insert(0, str(Path(__file__).resolve().parent / 'supercong'))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'supercong.settings')

import django  # noqa: E402

django.setup()
