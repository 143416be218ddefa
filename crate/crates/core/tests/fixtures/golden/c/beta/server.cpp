int alsoNotScanned;
