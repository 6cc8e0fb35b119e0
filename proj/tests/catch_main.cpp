// Amalgamated Catch2 implementation (provides main).
#include <catch2/catch_amalgamated.cpp>
