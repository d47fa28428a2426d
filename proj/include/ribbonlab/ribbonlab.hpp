#ifndef RIBBONLAB_RIBBONLAB_HPP
#define RIBBONLAB_RIBBONLAB_HPP

#include <ribbonlab/error.hpp>
#include <ribbonlab/scalar.hpp>
#include <ribbonlab/laurent.hpp>
#include <ribbonlab/linalg.hpp>
#include <ribbonlab/local2d.hpp>
#include <ribbonlab/fredholm.hpp>
#include <ribbonlab/schur.hpp>
#include <ribbonlab/geometry.hpp>
#include <ribbonlab/cohomology.hpp>

#endif
