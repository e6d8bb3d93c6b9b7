package com.example.results.model;

public class Mammal extends Animal {
    private int legs;
}
