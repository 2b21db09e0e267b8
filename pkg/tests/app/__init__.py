# Test package for the command-line app
