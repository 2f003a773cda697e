// Lift soundness of the lifted constructions and the lifted query.

#include "criteria.hpp"

int main( int argc, char** argv )
{
    const auto result = criteria::lift_soundness( criteria::setup_from( argc, argv ) );
    criteria::print( result );
    return result.passed ? 0 : 1;
}
