// placeholder, replaced as modules land
