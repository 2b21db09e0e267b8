# Test package for constants module
