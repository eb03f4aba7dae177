"""Sightline: a video-accessibility engine and service.

Detects timeline segments whose visual content is not conveyed by the
audio track, nudges sighted viewers toward visually grounded descriptive
comments, curates an accessible-comment list, and builds the beep/pause/
read-out manifest consumed by screen-reader playback.
"""

__version__ = "0.1.0"
