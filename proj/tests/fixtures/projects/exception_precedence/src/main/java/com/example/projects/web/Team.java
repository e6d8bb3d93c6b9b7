package com.example.projects.web;

public class Team {
    private String name;
}
