#pragma once

#include <stdexcept>
#include <string>

namespace syt {

// Base for every error the library raises on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidPartition : public Error {
public:
    using Error::Error;
};

class CellOutsideShape : public Error {
public:
    using Error::Error;
};

class SameCell : public Error {
public:
    using Error::Error;
};

class InnerNotContained : public Error {
public:
    using Error::Error;
};

class ShapeTooLarge : public Error {
public:
    using Error::Error;
};

class FitFailed : public Error {
public:
    using Error::Error;
};

class DivergesAtInfinity : public Error {
public:
    using Error::Error;
};

class DegenerateDistribution : public Error {
public:
    using Error::Error;
};

} // namespace syt
