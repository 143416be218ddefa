int not_java;
