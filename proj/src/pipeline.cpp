// not yet implemented
