// placeholder — under construction
