# Tests for burnside-marks
